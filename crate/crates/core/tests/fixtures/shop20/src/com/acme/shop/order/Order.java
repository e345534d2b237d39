package com.acme.shop.order;

import com.acme.shop.account.Customer;

public class Order {
    private OrderLine orderLine;
    private Customer customer;
    private Invoice invoice;

    public Order(OrderLine orderLine, Customer customer, Invoice invoice) {
        this.orderLine = orderLine;
        this.customer = customer;
        this.invoice = invoice;
    }

    public int lineCount() {
        return 2;
    }

    public OrderLine orderLine() {
        return orderLine;
    }
}
