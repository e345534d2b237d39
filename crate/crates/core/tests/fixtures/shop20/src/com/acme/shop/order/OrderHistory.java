package com.acme.shop.order;

import com.acme.shop.account.Customer;

public class OrderHistory {
    private Order order;
    private Customer customer;

    public OrderHistory(Order order, Customer customer) {
        this.order = order;
        this.customer = customer;
    }

    public int pastOrders() {
        return 9;
    }

    public Order order() {
        return order;
    }
}
